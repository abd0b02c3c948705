import java.math.BigDecimal;
import java.sql.*;

public class StockTypes {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT s_quantity, s_ytd, s_dist_01 FROM stock");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            short q = rs.getShort(1);
            long y = rs.getLong("s_ytd");
            String d = rs.getString("S_DIST_01");
        }
    }
}
