import java.math.BigDecimal;
import java.sql.*;

public class SetIndexAfterReassign {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT name FROM employee WHERE id = ? AND dept = ?");
        ps.setInt(1, 1);
        ps.setString(2, "RND");
        ps = conn.prepareStatement("SELECT name FROM employee WHERE id = ?");
        ps.setInt(1, 1);
        ps.setString(2, "RND");
    }
}
