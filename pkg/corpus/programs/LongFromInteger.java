import java.math.BigDecimal;
import java.sql.*;

public class LongFromInteger {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT salary FROM employee");
        ResultSet rs = ps.executeQuery();
        rs.next();
        long s = rs.getLong("salary");
    }
}
