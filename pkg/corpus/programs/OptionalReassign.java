import java.math.BigDecimal;
import java.sql.*;

public class OptionalReassign {
    public void run(Connection conn, boolean top, short rank) throws SQLException {
        String sql = "SELECT g_name FROM genre WHERE g_rank = ?";
        if (top) {
            sql = "SELECT g_name FROM genre WHERE g_rank < ?";
        }
        PreparedStatement ps = conn.prepareStatement(sql);
        ps.setShort(1, rank);
        ResultSet rs = ps.executeQuery();
    }
}
