import java.math.BigDecimal;
import java.sql.*;

public class BetweenBounds {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT name FROM employee WHERE salary BETWEEN ? AND ?");
        ps.setInt(1, 10000);
        ps.setInt(2, 60000);
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            String n = rs.getString(1);
        }
    }
}
