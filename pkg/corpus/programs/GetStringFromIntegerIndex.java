import java.math.BigDecimal;
import java.sql.*;

public class GetStringFromIntegerIndex {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT id, name FROM employee WHERE dept = ?");
        ps.setString(1, "OPS");
        ResultSet rs = ps.executeQuery();
        rs.next();
        String id = rs.getString(1);
    }
}
