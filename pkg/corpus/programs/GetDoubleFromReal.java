import java.math.BigDecimal;
import java.sql.*;

public class GetDoubleFromReal {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT tax FROM invoice WHERE inv_id = ?");
        ps.setLong(1, 10L);
        ResultSet rs = ps.executeQuery();
        rs.next();
        double t = rs.getDouble("tax");
    }
}
