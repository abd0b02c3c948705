import java.math.BigDecimal;
import java.sql.*;

public class ExecuteThenFetch {
    public void run(Connection conn) throws SQLException {
        Statement stmt = conn.createStatement();
        stmt.execute("SELECT total FROM invoice");
        ResultSet rs = stmt.getResultSet();
        rs.next();
        double t = rs.getDouble("total");
    }
}
