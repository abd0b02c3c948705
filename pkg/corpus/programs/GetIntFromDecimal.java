import java.math.BigDecimal;
import java.sql.*;

public class GetIntFromDecimal {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT bonus FROM employee");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            int b = rs.getInt("bonus");
        }
    }
}
