import java.math.BigDecimal;
import java.sql.*;

public class GetLabelAfterExecute {
    public void run(Connection conn) throws SQLException {
        Statement st = conn.createStatement();
        st.execute("SELECT total FROM invoice");
        ResultSet rs = st.getResultSet();
        rs.next();
        double t = rs.getDouble("tax");
    }
}
