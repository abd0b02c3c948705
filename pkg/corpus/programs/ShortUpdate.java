import java.math.BigDecimal;
import java.sql.*;

public class ShortUpdate {
    public void run(Connection conn, short qty) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("UPDATE stock SET s_quantity = ? WHERE s_i_id = ?");
        ps.setShort(1, qty);
        ps.setInt(2, 7);
        ps.executeUpdate();
    }
}
