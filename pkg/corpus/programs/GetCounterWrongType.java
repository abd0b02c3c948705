import java.math.BigDecimal;
import java.sql.*;

public class GetCounterWrongType {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT name, dept, hired FROM employee");
        ResultSet rs = ps.executeQuery();
        rs.next();
        int c = 1;
        String n = rs.getString(c++);
        String d = rs.getString(c++);
        int h = rs.getInt(c++);
    }
}
