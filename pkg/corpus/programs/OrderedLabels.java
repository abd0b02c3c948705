import java.math.BigDecimal;
import java.sql.*;

public class OrderedLabels {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT g_name, g_rank FROM genre ORDER BY g_rank DESC");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            String g = rs.getString("g_name");
            short r = rs.getShort("g_rank");
        }
    }
}
