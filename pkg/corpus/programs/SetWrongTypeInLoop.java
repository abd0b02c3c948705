import java.math.BigDecimal;
import java.sql.*;

public class SetWrongTypeInLoop {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT name FROM employee WHERE id = ?");
        int k = 0;
        while (k < 2) {
            ps.setString(1, "k" + k);
            ResultSet rs = ps.executeQuery();
            k = k + 1;
        }
    }
}
