import java.math.BigDecimal;
import java.sql.*;

public class CounterBinding {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("UPDATE warehouse SET qty = ? WHERE label = ?");
        int ctr = 1;
        ps.setInt(ctr++, 55);
        ps.setString(ctr++, "bolts");
        ps.executeUpdate();
    }
}
