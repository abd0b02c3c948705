import java.math.BigDecimal;
import java.sql.*;

public class GetIndexPlainStatement {
    public void run(Connection conn) throws SQLException {
        Statement st = conn.createStatement();
        ResultSet rs = st.executeQuery("SELECT qty FROM warehouse");
        rs.next();
        String q = rs.getString(2);
    }
}
