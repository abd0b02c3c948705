import java.math.BigDecimal;
import java.sql.*;

public class PreparedUpdate {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("UPDATE employee SET dept = ?, salary = ? WHERE id = ?");
        ps.setString(1, "OPS");
        ps.setInt(2, 31000);
        ps.setInt(3, 2);
        ps.executeUpdate();
    }
}
