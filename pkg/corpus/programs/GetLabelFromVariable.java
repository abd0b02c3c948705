import java.math.BigDecimal;
import java.sql.*;

public class GetLabelFromVariable {
    public void run(Connection conn) throws SQLException {
        String col = "wage";
        PreparedStatement ps = conn.prepareStatement("SELECT salary FROM employee");
        ResultSet rs = ps.executeQuery();
        rs.next();
        int w = rs.getInt(col);
    }
}
