import java.math.BigDecimal;
import java.sql.*;

public class SetIntIntoVarchar {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT id FROM employee WHERE name = ?");
        ps.setInt(1, 12);
    }
}
