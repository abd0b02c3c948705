import java.math.BigDecimal;
import java.sql.*;

public class GetShortFromInteger {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT g_id FROM genre");
        ResultSet rs = ps.executeQuery();
        rs.next();
        short g = rs.getShort("g_id");
    }
}
