import java.math.BigDecimal;
import java.sql.*;

public class AnnotatedReturn {
    public void run(Connection conn) throws SQLException {
        ResultSet rs = fetch(conn);
        rs.next();
        String g = rs.getString(1);
    }

    @Sql(out = {"VARCHAR g_name"})
    ResultSet fetch(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT g_name, g_id FROM genre");
        return ps.executeQuery();
    }
}
