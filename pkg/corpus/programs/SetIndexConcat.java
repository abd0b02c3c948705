import java.math.BigDecimal;
import java.sql.*;

public class SetIndexConcat {
    public void run(Connection conn) throws SQLException {
        String sql = "INSERT INTO genre (g_id, g_name) " + "VALUES (?, ?)";
        PreparedStatement ps = conn.prepareStatement(sql);
        ps.setInt(1, 3);
        ps.setString(2, "blues");
        ps.setString(3, "extra");
        ps.executeUpdate();
    }
}
