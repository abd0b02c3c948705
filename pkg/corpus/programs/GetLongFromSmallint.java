import java.math.BigDecimal;
import java.sql.*;

public class GetLongFromSmallint {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT s_quantity FROM stock WHERE s_w_id = ?");
        ps.setInt(1, 1);
        ResultSet rs = ps.executeQuery();
        rs.next();
        long q = rs.getLong(1);
    }
}
