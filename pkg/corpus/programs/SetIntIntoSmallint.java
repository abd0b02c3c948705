import java.math.BigDecimal;
import java.sql.*;

public class SetIntIntoSmallint {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("UPDATE stock SET s_quantity = ? WHERE s_i_id = ?");
        ps.setInt(1, 5);
        ps.setInt(2, 7);
    }
}
