import java.math.BigDecimal;
import java.sql.*;

public class SetStringIntoInteger {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT label FROM warehouse WHERE qty > ?");
        ps.setString(1, "5");
        ResultSet rs = ps.executeQuery();
    }
}
