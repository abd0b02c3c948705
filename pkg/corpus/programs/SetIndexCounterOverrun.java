import java.math.BigDecimal;
import java.sql.*;

public class SetIndexCounterOverrun {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("UPDATE employee SET salary = ? WHERE id = ?");
        int ctr = 1;
        ps.setInt(ctr++, 42000);
        ps.setInt(ctr++, 1);
        ps.setInt(ctr++, 2);
        ps.executeUpdate();
    }
}
