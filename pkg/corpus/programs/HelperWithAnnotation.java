import java.math.BigDecimal;
import java.sql.*;

public class HelperWithAnnotation {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT name, salary, dept FROM employee");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            show(rs);
        }
    }

    void show(@Sql(out = {"VARCHAR name", "INTEGER salary"}) ResultSet rs) throws SQLException {
        String n = rs.getString("name");
        int s = rs.getInt(2);
    }
}
