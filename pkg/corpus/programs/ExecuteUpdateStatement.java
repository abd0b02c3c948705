import java.math.BigDecimal;
import java.sql.*;

public class ExecuteUpdateStatement {
    public void run(Connection conn) throws SQLException {
        Statement st = conn.createStatement();
        boolean hasRows = st.execute("UPDATE warehouse SET qty = 0 WHERE w_id = 2");
    }
}
