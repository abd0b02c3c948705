import java.math.BigDecimal;
import java.sql.*;

public class GetIndexTooHigh {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT name, salary FROM employee");
        ResultSet rs = ps.executeQuery();
        rs.next();
        int x = rs.getInt(3);
    }
}
