import java.math.BigDecimal;
import java.sql.*;

public class StarAllColumns {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT * FROM employee WHERE id = ?");
        ps.setInt(1, 1);
        ResultSet rs = ps.executeQuery();
        rs.next();
        int id = rs.getInt(1);
        String n = rs.getString(2);
        int s = rs.getInt(3);
        String d = rs.getString(4);
        Date h = rs.getDate(5);
        BigDecimal b = rs.getBigDecimal(6);
        boolean a = rs.getBoolean(7);
    }
}
