import java.math.BigDecimal;
import java.sql.*;

public class IndexArithmetic {
    public void run(Connection conn) throws SQLException {
        int base = 1;
        PreparedStatement ps = conn.prepareStatement("SELECT id FROM employee WHERE salary > ? AND dept = ?");
        ps.setInt(base, 100);
        ps.setString(base + 1, "RND");
    }
}
