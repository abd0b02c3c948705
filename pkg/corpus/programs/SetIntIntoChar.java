import java.math.BigDecimal;
import java.sql.*;

public class SetIntIntoChar {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT id FROM employee WHERE dept = ?");
        ps.setInt(1, 3);
    }
}
