import java.math.BigDecimal;
import java.sql.*;

public class GetLabelOtherTable {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT label FROM warehouse");
        ResultSet rs = ps.executeQuery();
        rs.next();
        String n = rs.getString("name");
    }
}
