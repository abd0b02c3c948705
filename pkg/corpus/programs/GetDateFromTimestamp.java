import java.math.BigDecimal;
import java.sql.*;

public class GetDateFromTimestamp {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT stocked FROM warehouse WHERE w_id = ?");
        ps.setInt(1, 1);
        ResultSet rs = ps.executeQuery();
        rs.next();
        Date d = rs.getDate("stocked");
    }
}
