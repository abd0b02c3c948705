import java.math.BigDecimal;
import java.sql.*;

public class PlainStatementQuery {
    public void run(Connection conn) throws SQLException {
        Statement stmt = conn.createStatement();
        String sql = "SELECT label FROM warehouse";
        ResultSet rs = stmt.executeQuery(sql);
        while (rs.next()) {
            String label = rs.getString(1);
        }
    }
}
