import java.math.BigDecimal;
import java.sql.*;

public class SetIndexBranchJoin {
    public void run(Connection conn, boolean flag) throws SQLException {
        String sql = "SELECT name FROM employee WHERE id = ?";
        if (flag) {
            sql = "SELECT dept FROM employee WHERE id = ?";
        }
        PreparedStatement ps = conn.prepareStatement(sql);
        ps.setInt(2, 3);
    }
}
