import java.math.BigDecimal;
import java.sql.*;

public class ConcatColumns {
    public void run(Connection conn) throws SQLException {
        String cols = "g_id, g_name";
        String sql = "SELECT " + cols + " FROM genre";
        PreparedStatement ps = conn.prepareStatement(sql);
        ResultSet rs = ps.executeQuery();
        rs.next();
        int id = rs.getInt(1);
        String nm = rs.getString(2);
    }
}
