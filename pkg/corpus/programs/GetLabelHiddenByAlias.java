import java.math.BigDecimal;
import java.sql.*;

public class GetLabelHiddenByAlias {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT name AS full_name FROM employee");
        ResultSet rs = ps.executeQuery();
        rs.next();
        String n = rs.getString("name");
    }
}
