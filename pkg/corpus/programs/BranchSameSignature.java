import java.math.BigDecimal;
import java.sql.*;

public class BranchSameSignature {
    public void run(Connection conn, boolean flag) throws SQLException {
        String sql = "SELECT name FROM employee WHERE id = ?";
        if (flag) {
            sql = "SELECT name FROM employee WHERE salary = ?";
        }
        PreparedStatement ps = conn.prepareStatement(sql);
        ps.setInt(1, 1);
        ResultSet rs = ps.executeQuery();
        rs.next();
        String n = rs.getString("name");
    }
}
