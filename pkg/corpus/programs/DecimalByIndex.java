import java.math.BigDecimal;
import java.sql.*;

public class DecimalByIndex {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT bonus FROM employee WHERE id = ?");
        ps.setInt(1, 1);
        ResultSet rs = ps.executeQuery();
        rs.next();
        BigDecimal b = rs.getBigDecimal(1);
    }
}
