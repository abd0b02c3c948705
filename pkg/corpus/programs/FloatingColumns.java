import java.math.BigDecimal;
import java.sql.*;

public class FloatingColumns {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT total, tax, paid FROM invoice WHERE inv_id = ?");
        ps.setLong(1, 10L);
        ResultSet rs = ps.executeQuery();
        rs.next();
        double t = rs.getDouble(1);
        float x = rs.getFloat(2);
        boolean p = rs.getBoolean(3);
    }
}
