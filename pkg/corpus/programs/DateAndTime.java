import java.math.BigDecimal;
import java.sql.*;

public class DateAndTime {
    public void run(Connection conn) throws SQLException {
        PreparedStatement ps = conn.prepareStatement("SELECT issued, due FROM invoice");
        ResultSet rs = ps.executeQuery();
        rs.next();
        Date i = rs.getDate("issued");
        Time d = rs.getTime("due");
    }
}
