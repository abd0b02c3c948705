import java.math.BigDecimal;
import java.sql.*;

public class SetIntIntoBigint {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT total FROM invoice WHERE inv_id = ?");
        ps.setInt(1, 10);
    }
}
