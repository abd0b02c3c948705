import java.math.BigDecimal;
import java.sql.*;

public class DeleteInList {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("DELETE FROM genre WHERE g_id IN (?, ?)");
        ps.setInt(1, 1);
        ps.setInt(2, 2);
        int n = ps.executeUpdate();
    }
}
