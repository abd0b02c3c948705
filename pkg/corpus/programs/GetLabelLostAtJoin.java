import java.math.BigDecimal;
import java.sql.*;

public class GetLabelLostAtJoin {
    public void run(Connection conn, boolean flag) throws SQLException {
        String sql = "SELECT name, salary FROM employee";
        if (flag) {
            sql = "SELECT name, dept FROM employee";
        }
        PreparedStatement ps = conn.prepareStatement(sql);
        ResultSet rs = ps.executeQuery();
        rs.next();
        String n = rs.getString("name");
        int s = rs.getInt("salary");
    }
}
