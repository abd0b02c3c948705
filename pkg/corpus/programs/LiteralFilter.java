import java.math.BigDecimal;
import java.sql.*;

public class LiteralFilter {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT label FROM warehouse WHERE qty > 10 AND label <> 'x'");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            String l = rs.getString("label");
        }
    }
}
