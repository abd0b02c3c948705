import java.math.BigDecimal;
import java.sql.*;

public class StatementUpdate {
    public void run(Connection conn) throws SQLException {
        Statement st = conn.createStatement();
        int n = st.executeUpdate("DELETE FROM genre WHERE g_id = 3");
    }
}
