import java.math.BigDecimal;
import java.sql.*;

public class SetLongIntoInteger {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("DELETE FROM employee WHERE id = ?");
        ps.setLong(1, 2L);
        ps.executeUpdate();
    }
}
