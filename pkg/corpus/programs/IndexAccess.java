import java.math.BigDecimal;
import java.sql.*;

public class IndexAccess {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT id, name FROM employee WHERE salary > ?");
        ps.setInt(1, 1000);
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            int id = rs.getInt(1);
            String n = rs.getString(2);
        }
    }
}
