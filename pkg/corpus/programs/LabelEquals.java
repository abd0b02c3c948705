import java.math.BigDecimal;
import java.sql.*;

public class LabelEquals {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT w_id, label FROM warehouse WHERE label = ?");
        ps.setString(1, "bolts");
        ResultSet rs = ps.executeQuery();
        rs.next();
        int id = rs.getInt("w_id");
    }
}
