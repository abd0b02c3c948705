import java.math.BigDecimal;
import java.sql.*;

public class SetCounterIntoSmallint {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("INSERT INTO genre (g_id, g_name, g_rank) VALUES (?, ?, ?)");
        int i = 1;
        ps.setInt(i++, 4);
        ps.setString(i++, "punk");
        ps.setInt(i++, 1);
    }
}
