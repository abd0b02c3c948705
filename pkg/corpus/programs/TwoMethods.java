import java.math.BigDecimal;
import java.sql.*;

public class TwoMethods {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT g_id FROM genre");
        ResultSet rs = ps.executeQuery();
        rs.next();
        int g = rs.getInt("g_id");
    }

    public void other(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT g_name FROM genre WHERE g_id = ?");
        ps.setInt(1, 1);
        ResultSet rs = ps.executeQuery();
        rs.next();
        String g = rs.getString("g_name");
    }
}
