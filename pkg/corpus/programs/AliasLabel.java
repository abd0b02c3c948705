import java.math.BigDecimal;
import java.sql.*;

public class AliasLabel {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT e.name AS full_name FROM employee e WHERE e.id = ?");
        ps.setInt(1, 1);
        ResultSet rs = ps.executeQuery();
        rs.next();
        String n = rs.getString("full_name");
    }
}
