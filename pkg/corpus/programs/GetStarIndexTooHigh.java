import java.math.BigDecimal;
import java.sql.*;

public class GetStarIndexTooHigh {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT * FROM genre");
        ResultSet rs = ps.executeQuery();
        rs.next();
        int x = rs.getInt(4);
    }
}
