import java.math.BigDecimal;
import java.sql.*;

public class GetStringFromInteger {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT salary FROM employee WHERE id = ?");
        ps.setInt(1, 2);
        ResultSet rs = ps.executeQuery();
        rs.next();
        String s = rs.getString("salary");
    }
}
