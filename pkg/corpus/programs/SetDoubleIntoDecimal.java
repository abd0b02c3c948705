import java.math.BigDecimal;
import java.sql.*;

public class SetDoubleIntoDecimal {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("UPDATE employee SET bonus = ? WHERE id = ?");
        ps.setDouble(1, 1.5);
        ps.setInt(2, 1);
    }
}
