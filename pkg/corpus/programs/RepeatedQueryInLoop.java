import java.math.BigDecimal;
import java.sql.*;

public class RepeatedQueryInLoop {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT label FROM warehouse WHERE w_id = ?");
        int k = 1;
        while (k < 3) {
            ps.setInt(1, k);
            ResultSet rs = ps.executeQuery();
            if (rs.next()) {
                String l = rs.getString("label");
            }
            k++;
        }
    }
}
