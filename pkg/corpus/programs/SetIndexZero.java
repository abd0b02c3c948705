import java.math.BigDecimal;
import java.sql.*;

public class SetIndexZero {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT id FROM employee WHERE name = ?");
        ps.setString(0, "ann");
        ResultSet rs = ps.executeQuery();
    }
}
