import java.math.BigDecimal;
import java.sql.*;

public class TimestampAndDecimal {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT stocked, price FROM warehouse WHERE w_id = ?");
        ps.setInt(1, 2);
        ResultSet rs = ps.executeQuery();
        if (rs.next()) {
            Timestamp s = rs.getTimestamp(1);
            BigDecimal p = rs.getBigDecimal(2);
        }
    }
}
