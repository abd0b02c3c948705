import java.math.BigDecimal;
import java.sql.*;

public class LabelFromVariable {
    public void run(Connection conn) throws SQLException {
        String col = "qty";
        PreparedStatement ps = conn.prepareStatement("SELECT qty FROM warehouse");
        ResultSet rs = ps.executeQuery();
        rs.next();
        int q = rs.getInt(col);
    }
}
