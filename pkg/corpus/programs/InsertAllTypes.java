import java.math.BigDecimal;
import java.sql.*;

public class InsertAllTypes {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("INSERT INTO employee VALUES (?, ?, ?, ?, ?, ?, ?)");
        ps.setInt(1, 3);
        ps.setString(2, "cid");
        ps.setInt(3, 41000);
        ps.setString(4, "OPS");
        ps.setDate(5, Date.valueOf("2020-03-04"));
        ps.setBigDecimal(6, new BigDecimal("2.50"));
        ps.setBoolean(7, true);
        ps.executeUpdate();
    }
}
