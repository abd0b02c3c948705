import java.math.BigDecimal;
import java.sql.*;

public class GetAfterResultReassign {
    public void run(Connection conn) throws SQLException {
        PreparedStatement a = conn.prepareStatement("SELECT qty FROM warehouse");
        PreparedStatement b = conn.prepareStatement("SELECT label FROM warehouse");
        ResultSet rs = a.executeQuery();
        rs.next();
        int q = rs.getInt(1);
        rs = b.executeQuery();
        rs.next();
        int l = rs.getInt(1);
    }
}
