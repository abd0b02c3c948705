import java.math.BigDecimal;
import java.sql.*;

public class GetIndexZero {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT name FROM employee WHERE salary > ?");
        ps.setInt(1, 100);
        ResultSet rs = ps.executeQuery();
        rs.next();
        String s = rs.getString(0);
    }
}
