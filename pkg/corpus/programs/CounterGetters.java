import java.math.BigDecimal;
import java.sql.*;

public class CounterGetters {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT w_id, label, qty FROM warehouse");
        ResultSet rs = ps.executeQuery();
        rs.next();
        int c = 1;
        int id = rs.getInt(c++);
        String l = rs.getString(c++);
        int q = rs.getInt(c++);
    }
}
