import java.math.BigDecimal;
import java.sql.*;

public class CaseInsensitiveLabel {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT name, dept FROM employee");
        ResultSet rs = ps.executeQuery();
        rs.next();
        String n = rs.getString("NAME");
        String d = rs.getString("Dept");
    }
}
