import java.math.BigDecimal;
import java.sql.*;

public class SetIndexInLoop {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT label FROM warehouse WHERE qty > ?");
        int n = 0;
        while (n < 3) {
            ps.setInt(1, n);
            ps.setInt(2, n);
            n++;
        }
    }
}
