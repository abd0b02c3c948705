import java.math.BigDecimal;
import java.sql.*;

public class IndexVariable {
    public void run(Connection conn) throws SQLException {
        int col = 2;
        PreparedStatement ps = conn.prepareStatement("SELECT label, qty FROM warehouse");
        ResultSet rs = ps.executeQuery();
        rs.next();
        int q = rs.getInt(col);
    }
}
