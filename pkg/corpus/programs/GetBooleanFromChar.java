import java.math.BigDecimal;
import java.sql.*;

public class GetBooleanFromChar {
    public void run(Connection conn) throws SQLException {
        Statement st = conn.createStatement();
        ResultSet rs = st.executeQuery("SELECT dept FROM employee");
        rs.next();
        boolean b = rs.getBoolean("dept");
    }
}
