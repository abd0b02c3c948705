import java.math.BigDecimal;
import java.sql.*;

public class SetWrongTypeAfterJoin {
    public void run(Connection conn, boolean flag) throws SQLException {
        String sql = "SELECT name FROM employee WHERE salary BETWEEN ? AND ?";
        if (flag) {
            sql = "SELECT dept FROM employee WHERE salary BETWEEN ? AND ?";
        } else {
            sql = "SELECT hired FROM employee WHERE salary BETWEEN ? AND ?";
        }
        PreparedStatement ps = conn.prepareStatement(sql);
        ps.setInt(1, 10);
        ps.setString(2, "90000");
    }
}
