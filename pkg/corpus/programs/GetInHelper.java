import java.math.BigDecimal;
import java.sql.*;

public class GetInHelper {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT name, salary FROM employee");
        ResultSet rs = ps.executeQuery();
        rs.next();
        show(rs);
    }

    void show(@Sql(out = {"VARCHAR name", "INTEGER salary"}) ResultSet rs) throws SQLException {
        String n = rs.getString("name");
        String s = rs.getString("salary");
    }
}
