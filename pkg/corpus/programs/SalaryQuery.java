import java.math.BigDecimal;
import java.sql.*;

public class SalaryQuery {
    public void run(Connection conn) throws SQLException {
        String sql = "SELECT name FROM ";
        sql += "employee WHERE salary < ?";
        PreparedStatement ps = conn.prepareStatement(sql);
        ps.setInt(1, 40000);
        ResultSet rs = ps.executeQuery();
        rs.next();
        String name = rs.getString("name");
    }
}
