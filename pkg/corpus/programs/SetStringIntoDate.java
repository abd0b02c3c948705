import java.math.BigDecimal;
import java.sql.*;

public class SetStringIntoDate {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("UPDATE invoice SET issued = ? WHERE inv_id = ?");
        ps.setString(1, "2023-01-01");
        ps.setLong(2, 10L);
    }
}
