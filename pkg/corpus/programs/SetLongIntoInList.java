import java.math.BigDecimal;
import java.sql.*;

public class SetLongIntoInList {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("DELETE FROM employee WHERE id IN (?, ?)");
        ps.setInt(1, 1);
        ps.setLong(2, 2L);
    }
}
