import java.math.BigDecimal;
import java.sql.*;

public class SetIndexTooHigh {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT name FROM employee WHERE id = ?");
        ps.setInt(1, 7);
        ps.setInt(2, 7);
        ResultSet rs = ps.executeQuery();
    }
}
