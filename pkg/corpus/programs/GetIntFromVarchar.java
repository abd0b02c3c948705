import java.math.BigDecimal;
import java.sql.*;

public class GetIntFromVarchar {
    public void run(Connection conn) throws SQLException {
        String sql = "SELECT name FROM ";
        sql += "employee WHERE salary < ?";
        PreparedStatement ps = conn.prepareStatement(sql);
        ps.setInt(1, 40000);
        ResultSet rs = ps.executeQuery();
        rs.next();
        int name = rs.getInt("name");
    }
}
