import java.math.BigDecimal;
import java.sql.*;

public class GetLabelTypo {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT name, dept FROM employee");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            String n = rs.getString("nam");
        }
    }
}
